package uas;

@SuppressWarnings({"unused", "class"})
public class UniversityApp {
    private static String name = "SSN", city;
    private static LoginService login;
    private static RegisterService register;
    private static Library library;
    private static Department[] departments;
    private static int year;
    private static final String VERSION = "1.0";
    private static boolean debug;

    public static void main(String[] args) {
        login = new LoginService();
        login.login("admin", "secret");
        login.logout();
    }
}
