package uas;

public class Course {
    private String code, title;
    private int credits;
    private int capacity, enrolled;
    private String instructor;
    private String[] prerequisites;
    private String syllabus = """
        before(): everything() { }
        class NotAClass { }
        """;
    static final int MAX_CREDITS = 6, MIN_CREDITS = 1;

    public String describe() {
        /* around(): describe() { proceed(); } */
        return code + " " + title;
    }
}
