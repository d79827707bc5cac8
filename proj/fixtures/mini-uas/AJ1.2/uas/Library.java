package uas;

public class Library {
    private String name, librarian, location;
    private int totalBooks, issued, reserved;
    private java.util.List<Book> catalog;
    private double finePerDay, maxFine;
    private boolean open, digital;
    private int maxIssue = 4, renewDays = 14;
    private String openTime, closeTime;
    private java.util.Map<String, Book> byIsbn;
    private long members;

    public static class Book {
        private String isbn, title, author, coAuthor;
        private int year, edition, pages;
        private String publisher, language;
        private int copies, available;
        private double price;
        private boolean reference, damaged;

        Book() {
        }

        public String title() {
            return title;
        }
    }
}
