package uas;

import java.util.List;

// Logging of student logins now lives in uas.aspects.Logging.
public class Student {
    private String name, id, email, phone;
    private String address, city, state, pin;
    private int year, semester, section;
    private double cgpa, sgpa;
    private List<String> courses;
    private int[] marks;
    private String guardian, guardianPhone;
    private boolean active, hostel, scholarship;

    public Student(String name) {
        this.name = name;
    }

    public String getName() {
        return name;
    }

    public String getId() {
        return id;
    }

    public void notifyResult(Result r) {
        // shown on the student dashboard at next login
    }
}
