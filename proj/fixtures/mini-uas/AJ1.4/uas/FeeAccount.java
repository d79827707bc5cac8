package uas;

public class FeeAccount {
    private Student student;
    private double tuition, hostel, transport, library, exam;
    private double paid, due, fine;
    private String receiptNo, bank, mode;
    private java.util.Date lastPayment, dueDate;
    private boolean scholarship, installment;
    private int installments;
    private String currency = "INR";

    public FeeAccount(Student student) {
        this.student = student;
    }
}
