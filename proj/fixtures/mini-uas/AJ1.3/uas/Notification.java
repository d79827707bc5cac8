package uas;

public class Notification {
    private String to, cc, subject, body;
    private String channel = "email";
    private int retries, priority;
    private boolean sent, read;
    private java.util.Date createdAt, sentAt;
    private String template;

    public void send() {
        sent = true;
        sentAt = new java.util.Date();
    }

    public String format(Result r) {
        return String.format("Dear %s, your result for %s is out.", to, subject);
    }
}
