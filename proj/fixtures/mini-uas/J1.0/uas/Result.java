package uas;

public class Result {
    private Student student;
    private Course course;
    private int internal, external, total;
    private char letter;
    private double gradePoint;
    private boolean published, revalued;
    private String remarks;

    public char grade() {
        total = internal + external;
        return total >= 90 ? 'S' : total >= 50 ? 'P' : 'F';
    }
}
