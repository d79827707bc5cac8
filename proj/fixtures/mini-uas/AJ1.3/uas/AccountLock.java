package uas;

import java.util.Date;

public class AccountLock {
    private String userId, reason;
    private int failures, threshold;
    private Date lockedAt, unlockAt;
    private boolean permanent, notified;
    private String unlockedBy;
    private long cooldownMillis = 15 * 60 * 1000L;

    public void lock(String why) {
        reason = why;
        lockedAt = new Date();
    }

    public void unlock(String by) {
        unlockedBy = by;
        failures = 0;
    }
}
