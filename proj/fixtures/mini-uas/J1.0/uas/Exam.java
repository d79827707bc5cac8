package uas;

import java.time.LocalDate;

public class Exam {
    private String examId;
    private Course course;
    private LocalDate date;
    private String hall;
    private int duration, maxMarks;
    private String[] invigilators = {"a", "b"}, squads;
    private boolean online;
    private String type;

    public void schedule(LocalDate when, String hall) {
        this.date = when;
        this.hall = hall;
    }
}
