package uas;

public class Staff {
    private String staffId, name, designation;
    private String department;
    private double salary;
    private int experience;
    private java.util.Map<String, Integer> load = new java.util.HashMap<String, Integer>(), leaves;
    private char grade = '}';
    private long joinedOn;
    private boolean permanent;

    public Staff(String staffId) {
        this.staffId = staffId;
    }

    @Override
    public String toString() {
        return "Staff(" + staffId + ")";
    }
}
