// Main.java
/*
 * Synthetic fixture source.
 */
package src;

import java.util.List;

/**
 * Main class comment mentioning class Decoy and testNothing().
 */
public class Main {
    private int counter = 0; // trailing comment counts as code
    private String label = "class Fake extends TestCase";
    // public void testCommentedOut() {
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
        counter += 1;
        counter += 2;
        counter += 3;
        // step 49
        counter += 4;
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
        // step 60
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
        // step 71
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
        // step 82
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
        // step 93
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
        counter += 3;
        // step 104
        counter += 4;
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

        // step 115
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
        // step 126
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
        // step 137
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
        // step 148
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
        counter += 3;
        // step 159
        counter += 4;
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
        // step 170
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
        // step 181
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

        // step 192
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
        // step 203
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

        counter += 3;
        // step 214
        counter += 4;
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
        // step 225
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
        // step 236
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
        // step 247
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
        // step 258
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
        counter += 3;

        // step 269
        counter += 4;
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
        // step 280
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
        // step 291
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
        // step 302
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
        // step 313
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
        counter += 3;
        // step 324
        counter += 4;

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
        // step 335
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

        // step 346
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
        // step 357
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
        // step 368
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
        counter += 3;
        // step 379
        counter += 4;
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
        // step 390
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
        // step 401
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
        // step 412
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

        // step 423
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
        counter += 3;
        // step 434
        counter += 4;
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
        // step 445
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
        // step 456
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
        // step 467
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
        // step 478
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
        counter += 3;
        // step 489
        counter += 4;
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

        // step 500
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
        // step 511
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
        // step 522
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
        // step 533
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
        counter += 3;
        // step 544
        counter += 4;
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
        // step 555
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
        // step 566
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

        // step 577
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
        // step 588
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

        counter += 3;
        // step 599
        counter += 4;
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
        // step 610
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
        // step 621
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
        // step 632
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
        // step 643
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
        counter += 3;

        // step 654
        counter += 4;
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
        // step 665
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
        // step 676
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
        // step 687
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
        // step 698
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
        counter += 3;
        // step 709
        counter += 4;

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
        // step 720
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

        // step 731
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
        // step 742
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
        // step 753
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
        counter += 3;
        // step 764
        counter += 4;
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
        // step 775
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
        // step 786
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
        // step 797
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

        // step 808
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
        counter += 3;
        // step 819
        counter += 4;
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
        // step 830
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
        // step 841
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
        // step 852
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
        // step 863
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
        counter += 3;
        // step 874
        counter += 4;
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

        // step 885
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
        // step 896
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
        // step 907
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
        // step 918
        counter += 3;
        counter += 4;

        counter += 0;
        counter += 1;
    }
}
