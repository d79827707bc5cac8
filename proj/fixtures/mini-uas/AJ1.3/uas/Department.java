package uas;

import java.util.List;
import java.util.Map;

public class Department {
    private String name, code, head;
    private List<Course> courses;
    private Map<String, List<Staff>> faculty;
    private int budget, intake, labs, classrooms;
    private String building, floor;
    private boolean accredited, research;
    private String email, phone, website;
}
