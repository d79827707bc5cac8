package uas;

public class Course {
    private String code, title, shortTitle;
    private int credits, lectureHours, labHours;
    private int capacity, enrolled, waitlisted;
    private String instructor, coordinator;
    private String[] prerequisites, corequisites;
    private String syllabus, textbook;
    static final int MAX_CREDITS = 6, MIN_CREDITS = 1;

    public String describe() {
        return code + " " + title + " (" + credits + " credits)";
    }
}
