package uas;

public class RegisterService {
    private String dbUrl, dbUser, dbPassword;
    private String studentTable, staffTable;
    private int registered, rejected, pending;
    private boolean autoApprove, notify;
    private String[] mandatoryFields;
    private String approver, remarks;
    private java.util.Map<String, String> form = new java.util.HashMap<String, String>(), errors;
    private long lastRegistration;
    private int batchSize = 50;

    public void validate(java.util.Map<String, String> form) {
        for (String field : mandatoryFields) {
            if (!form.containsKey(field)) {
                throw new IllegalArgumentException("missing " + field);
            }
        }
    }

    public void registerStudent(Student s) {
        registered++;
    }

    public void registerStaff(Staff s) {
        registered++;
    }

    void persist(String table, java.util.Map<String, String> row) {
        lastRegistration = System.currentTimeMillis();
    }
}
