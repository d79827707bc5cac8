package shop;

public class Cart {
    private int items;
    private double total;

    public void add(double price) {
        items++;
        total += price;
    }
}
