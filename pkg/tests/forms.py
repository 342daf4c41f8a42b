"""Fixed regression forms shared across the test modules.

Each form is nonnegative with known real zeros; the zero coordinates and
minimal polynomials stored here were verified exactly (every ZeroPoint
constructor re-checks vanishing).  Minimal polynomials are ascending
coefficient tuples, constant term first.
"""

# binary quartic whose Gram pencil has a single parameter
BINARY_QUARTIC = "10*x^4+2*x^3*y+27*x^2*y^2-24*x*y^3+5*y^4"

# ternary quartic with one algebraic zero (1, a, (3+5a^2)/(2-a));
# a is the real root of 50 Z^4 + 28 Z^3 - Z^2 + 23 Z - 8
QUARTIC = ("10*x^4+6*x^3*y-22*x^3*z+39*x^2*y^2-24*x^2*y*z+33*x^2*z^2"
           "-20*x*y^2*z+8*x*y*z^2-20*x*z^3+25*y^4+10*y^3*z+y^2*z^2+4*z^4")
QUARTIC_MINPOLY = (-8, 23, -1, 28, 50)
QUARTIC_ZEROS_FILE = ("minpoly: 50*Z^4+28*Z^3-Z^2+23*Z-8 ; "
                      "coords: 1, a, (3+5*a^2)/(2-a) ; label: gamma(1)\n")

# ternary octic with two rational zeros and one quintic algebraic zero
OCTIC = """3618*x^8+468*x^7*y+6504*x^7*z-1104*x^6*y^2+2616*x^6*y*z+57481*x^6*z^2-
144*x^5*y^3-1652*x^5*y^2*z-16440*x^5*y*z^2+23420*x^5*z^3+160*x^4*y^4+
1392*x^4*y^3*z-2520*x^4*y^2*z^2-28448*x^4*y*z^3+91320*x^4*z^4-240*x^3*y^4*z+
1728*x^3*y^3*z^2+10524*x^3*y^2*z^3-85500*x^3*y*z^4+34740*x^3*z^5-3696*x^2*y^3*z^3+
28920*x^2*y^2*z^4-15192*x^2*y*z^5-57267*x^2*z^6+720*x*y^4*z^3-3312*x*y^3*z^4-
3168*x*y^2*z^5+26352*x*y*z^6-40176*x*z^7+720*y^4*z^4+864*y^3*z^5-9072*y^2*z^6+
46656*z^8"""
OCTIC_MINPOLY = (36, -36, -921, 152, -327, 648)
OCTIC_Y3 = "(648*a^4-327*a^3+152*a^2-777*a-36)/60"
OCTIC_ZEROS_FILE = ("coords: 0, 1, 0\n"
                    "coords: 0, -3, 1\n"
                    "minpoly: 648*Z^5-327*Z^4+152*Z^3-921*Z^2-36*Z+36 ; "
                    "coords: 1, " + OCTIC_Y3 + ", a\n")

# quaternary sextic produced by the three-square generator at
# (a3, b1, b2, b3, c1, c2, c3) = (21z, x, 3x, y, z, x+7z, w), times 4
SEXTIC4 = """4*w^4*x^2+56*w^4*x*z+200*w^4*z^2-504*w^3*x^2*z-3696*w^3*x*z^2
-112*w^2*x^4-656*w^2*x^3*z-12*w^2*x^2*y^2+168*w^2*x^2*y*z+20008*w^2*x^2*z^2
-88*w^2*x*y^2*z+2352*w^2*x*y*z^2+11200*w^2*x*z^3
+8400*w^2*y*z^3+20000*w^2*z^4+16*w*x^4*y+7896*w*x^4*z+128*w*x^3*y*z-10752*w*x^3*z^2
+840*w*x^2*y^2*z-10328*w*x^2*y*z^2-76944*w*x^2*z^3
-77616*w*x*y*z^3-184800*w*x*z^4+932*x^6-1656*x^5*z+188*x^4*y^2-2352*x^4*y*z-10020*x^4*z^2
-256*x^3*y^2*z-13776*x^3*y*z^2+3520*x^3*z^3+10*x^2*y^4-252*x^2*y^3*z-68*x^2*y^2*z^2
+49728*x^2*y*z^3+175824*x^2*z^4-1848*x*y^3*z^2+20296*x*y^2*z^3
+235200*x*y*z^4+420000*x*z^5+88200*y^2*z^4+420000*y*z^5+500000*z^6"""
SEXTIC4_GEN_INPUTS = ("21*z", "x", "3*x", "y", "z", "x+7*z", "w")

MOTZKIN = "x^4*y^2+x^2*y^4-3*x^2*y^2*z^2+z^6"
MOTZKIN_ZEROS = ((1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1),
                 (1, 0, 0), (0, 1, 0))
MOTZKIN_ZEROS_FILE = "".join(
    "coords: %d, %d, %d\n" % c for c in MOTZKIN_ZEROS)

# nonnegative ternary quartic that is not a sum of squares; its zero is
# ((b^5+b^2-4b)/2, b, 1) with b the real root of Z^6 - 4 Z^2 - 1
NONSOS_QUARTIC = ("x^4+x*y^3+y^4-3*x^2*y*z-4*x*y^2*z+2*x^2*z^2"
                  "+x*z^3+y*z^3+z^4")
NONSOS_MINPOLY = (-1, 0, -4, 0, 0, 0, 1)
NONSOS_ZEROS_FILE = "minpoly: Z^6-4*Z^2-1 ; coords: (a^5+a^2-4*a)/2, a, 1\n"

# ternary sextic that is a sum of two cubic squares; the descent inputs
# live over Q(a) with a^3 = 2, the descent outputs are the two cubics
TWO_SQUARE_SEXTIC = ("5*x^6+12*x^5*y+12*x^5*z+3*x^4*y^2+12*x^4*z^2-4*x^3*y^3"
                     "-36*x^3*y^2*z-36*x^3*y*z^2-4*x^3*z^3+3*x^2*y^4+12*x^2*z^4"
                     "+12*x*y^3*z^2+12*x*y^2*z^3+y^6+4*z^6")
TWO_SQUARE_IN1 = "2*a^2*x^2*z-2*a^2*y*z^2+2*a*x^3-2*a*x*y*z-2*x^3+x^2*y-2*x*z^2+y^3"
TWO_SQUARE_IN2 = "2*a^2*x^3-2*a^2*x*y*z+2*a*x^2*y-2*a*y^2*z-x^3+2*x^2*z-x*y^2+2*z^3"
TWO_SQUARE_P1 = """-10*x^9-39*x^8*y-24*x^8*z-42*x^7*y^2-36*x^7*y*z+6*x^7*z^2+4*x^6*y^3+72*x^6*y^2*z+
108*x^6*y*z^2+80*x^6*z^3+18*x^5*y^4+120*x^5*y^3*z+126*x^5*y^2*z^2+12*x^5*y*z^3+48*x^5*z^4-
6*x^4*y^5-36*x^4*y^3*z^2-240*x^4*y^2*z^3-252*x^4*y*z^4-24*x^4*z^5-6*x^3*y^6-36*x^3*y^5*z-
54*x^3*y^4*z^2-40*x^3*y^3*z^3+64*x^3*z^6+84*x^2*y^3*z^4+72*x^2*y^2*z^5-12*x^2*y*z^6+
18*x*y^6*z^2+12*x*y^5*z^3+24*x*z^8+y^9+4*y^3*z^6"""
TWO_SQUARE_P2 = """5*x^9+12*x^8*y+42*x^8*z-12*x^7*y^2+72*x^7*y*z+84*x^7*z^2-40*x^6*y^3-54*x^6*y^2*z-
36*x^6*y*z^2+58*x^6*z^3-6*x^5*y^4-24*x^5*y^3*z-252*x^5*y^2*z^2-240*x^5*y*z^3-36*x^5*z^4+
12*x^4*y^5+126*x^4*y^4*z+120*x^4*y^3*z^2+18*x^4*y^2*z^3+48*x^4*z^5-8*x^3*y^6+80*x^3*y^3*z^3+
108*x^3*y^2*z^4+72*x^3*y*z^5+12*x^3*z^6+6*x^2*y^6*z-36*x^2*y^5*z^2-42*x^2*y^4*z^3-3*x*y^8-
24*x*y^3*z^5-36*x*y^2*z^6-2*y^6*z^3-8*z^9"""
TWO_SQUARE_Q1 = "2*x^3+3*x^2*y-6*x*z^2-y^3"
TWO_SQUARE_Q2 = "x^3+6*x^2*z-3*x*y^2-2*z^3"
