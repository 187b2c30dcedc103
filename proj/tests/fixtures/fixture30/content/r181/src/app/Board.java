// Board.java
/*
 * Synthetic fixture source.
 */
package src.app;

import java.util.List;

/**
 * Board class comment mentioning class Decoy and testNothing().
 */
public class Board {
    private int counter = 0; // trailing comment counts as code
    private String label = "class Fake extends TestCase";
    // public void testCommentedOut() {

    static class Helper0 {
        int value = 0;
    }

    static class Helper1 {
        int value = 1;
    }
    void fill() {
        counter += 0;
        counter += 1;
        counter += 2;

        counter += 3;
        counter += 4;
        // step 5
        counter += 0;
        counter += 1;
        counter += 2;
        counter += 3;
        counter += 4;

        counter += 0;
        counter += 1;
        counter += 2;
        counter += 3;
        counter += 4;
        counter += 0;
        // step 16
        counter += 1;

        counter += 2;
        counter += 3;
        counter += 4;
        counter += 0;
        counter += 1;
        counter += 2;
        counter += 3;

        counter += 4;
        counter += 0;
        counter += 1;
        // step 27
        counter += 2;
        counter += 3;
        counter += 4;
        counter += 0;

        counter += 1;
        counter += 2;
        counter += 3;
        counter += 4;
        counter += 0;
        counter += 1;
        counter += 2;

        // step 38
        counter += 3;
        counter += 4;
        counter += 0;
        counter += 1;
        counter += 2;
        counter += 3;
        counter += 4;

        counter += 0;
    }
}
