package uas;

public class Exam {
    private String examId, hall, type;
    private Course course;
    private java.time.LocalDate date;
    private int duration, maxMarks, passMarks;
    private String[] invigilators = {"a", "b"}, squads;
    private boolean online, supplementary;
    private String session, shift;
    private int registeredCount, absentees;
}
