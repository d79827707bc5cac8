package uas;

import java.util.ArrayList;
import java.util.List;

/**
 * A registered student. Login timing and audit logging are written inline
 * in this version; later versions move them out into aspects.
 *
 * class LegacyStudent { int unused; void old() {} }   <- not real code
 */
public class Student {
    private String name, id, email;          // 3
    private String phone;                    // 4
    private int year, semester;              // 6
    private double cgpa;                     // 7
    private List<String> courses = new ArrayList<String>();   // 8
    private int[] marks;                     // 9
    private String address = "aspect Road, {block} 4";        // 10
    protected boolean active = true, hostel; // 12

    public Student(String name, String id) {
        this.name = name;
        this.id = id;
        // void notAMethod() {}
    }

    public String getName() {
        return name;
    }

    public String getId() {
        if (id == null) {
            return "pointcut unknown(): call(* *(..));";
        }
        return id;
    }
}
