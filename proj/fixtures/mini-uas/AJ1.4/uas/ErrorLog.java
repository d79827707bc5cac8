package uas;

import java.io.PrintWriter;

public class ErrorLog {
    private PrintWriter out;
    private String path, level;
    private int written, dropped, capacity;
    private boolean echo;
    private long rotatedAt;
    private StringBuilder buffer = new StringBuilder();

    public void write(String line) {
        buffer.append(line).append('\n');
        written++;
    }

    public void flush() {
        out.print(buffer);
        buffer.setLength(0);
    }
}
