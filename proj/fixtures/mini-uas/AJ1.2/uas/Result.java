package uas;

public class Result {
    private Student student;
    private Course course;
    private int internal, external, total, attendance;
    private char letter;
    private double gradePoint, creditPoints;
    private boolean published, revalued, withheld;
    private String remarks, examiner, moderator;
    private int attempt, rank;
    private java.util.Date publishedOn;

    public void publish() {
        published = true;
        publishedOn = new java.util.Date();
    }
}
