package uas;

import java.util.Date;

/* Before aspectization this class wrote its own audit and event logs:
 *     private java.io.PrintWriter auditLog, eventLog;
 *     public void writeLog(String event) { ... }
 */
public class LoginService {
    private String user, password, role;
    private Date lastLogin, lastLogout;
    private int attempts, maxAttempts = 3;
    private boolean locked, twoFactor;
    private long sessionTimeout = 30L * 60 * 1000;
    private String captcha, otp, token;
    private java.util.Set<String> activeSessions = new java.util.HashSet<String>();
    private String loginPage = "/login?next=/home";

    public void studentLogin(String user, String password) {
        this.user = user;
        this.role = "student";
        lastLogin = new Date();
    }

    public void staffLogin(String user, String password) {
        this.user = user;
        this.role = "staff";
        lastLogin = new Date();
    }

    public void changePassword(String oldPassword, String newPassword) {
        if (password.equals(oldPassword)) {
            password = newPassword;
        }
    }

    public void logout() {
        lastLogout = new Date();
        activeSessions.remove(user);
    }
}
