package uas;

import java.util.List;

public class Library {
    private String name;
    private int totalBooks, issued;
    private List<Book> catalog;
    private double finePerDay;
    private String librarian;
    private boolean open;
    private int maxIssue = 4, renewDays = 14;

    public Book issue(String isbn, Student to) {
        issued++;
        return null;
    }

    public static class Book {
        private String isbn, title, author;
        private int year;
        private String publisher;
        private int copies;
        private double price;
        private boolean reference;

        Book() {
        }

        public String title() {
            return title;
        }
    }
}
