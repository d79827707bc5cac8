package uas;

public class RegisterService {
    private String dbUrl, dbUser, dbPassword;
    private java.sql.Connection connection;
    private int registered;
    private String table = "students";
    private String insertSql = "INSERT INTO students VALUES (?, ?)", updateSql;
    private boolean autoCommit;

    public void register(Student s) throws java.sql.SQLException {
        try {
            connection.prepareStatement(insertSql).execute();
        } catch (java.sql.SQLException e) {
            System.err.println("registration failed: " + e);
            throw e;
        }
    }
}
