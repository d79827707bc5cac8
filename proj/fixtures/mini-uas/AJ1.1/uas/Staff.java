package uas;

public class Staff {
    private String staffId, name, designation, department;
    private String email, phone, office;
    private double salary, allowance;
    private int experience, publications, projects;
    private java.util.Map<String, Integer> load, leaves;
    private char grade;
    private long joinedOn;
    private boolean permanent, onLeave;

    public Staff(String staffId) {
        this.staffId = staffId;
    }
}
