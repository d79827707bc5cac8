package uas;

import java.util.*;

public class Department {
    private String name;
    private String head;
    private List<Course> courses = new ArrayList<>();
    private Map<String, List<Staff>> faculty = new HashMap<>();
    private int budget, intake, labs;
    private String building;
    private boolean accredited;

    static {
        // static initializer, not a member
        System.out.println("Department loaded");
    }

    public void addCourse(Course c) {
        courses.add(c);
        Runnable r = new Runnable() {
            public void run() { courses.size(); }
        };
        r.run();
    }
}
