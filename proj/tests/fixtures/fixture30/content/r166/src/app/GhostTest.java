// GhostTest.java
/*
 * Synthetic fixture source.
 */
package src.app;

import org.junit.Before;
import org.junit.Test;
import static org.junit.Assert.assertTrue;

/**
 * GhostTest class comment mentioning class Decoy and testNothing().
 */
public class GhostTest {
    private int counter = 0; // trailing comment counts as code
    @Before
    public void setUp() { counter = 1; }

    @Test
    public void testCase0() {
        assertTrue(counter >= 0 - 0);
    }
    @Test
    public void testCase1() {
        assertTrue(counter >= 1 - 1);
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
    }
}
