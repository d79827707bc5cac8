package uas;

import java.util.Date;

public class LoginService {
    private String user, password;
    private Date lastLogin;
    private int attempts;
    private boolean locked;
    private java.io.PrintWriter auditLog, eventLog;
    private long sessionTimeout = 30L * 60 * 1000;

    public void login(String user, String password) {
        eventLog.println("login at " + new Date());
        auditLog.println(user + " logged in");
        this.user = user;
    }

    public void logout() {
        eventLog.println("logout at " + new Date());
    }
}
