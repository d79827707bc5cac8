package corrupt;

public class Good {
    private int value;

    public int value() {
        return value;
    }
}
