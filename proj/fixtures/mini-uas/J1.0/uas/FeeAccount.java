package uas;

public class FeeAccount {
    private Student student;
    private double tuition, hostel, transport, library;
    private double paid;
    private double due;
    private String receiptNo;
    private java.util.Date lastPayment;
    private boolean scholarship;

    public FeeAccount(Student student) {
        this.student = student;
    }

    public void pay(double amount) {
        paid += amount;
        due = tuition + hostel + transport + library - paid;
    }
}
