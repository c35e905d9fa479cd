int gcd(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;

    int shift = 0;
norm_loop:
    while (((a | b) & 1) == 0) {
#pragma HLS LOOP_TRIPCOUNT max=31
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while ((a & 1) == 0) a >>= 1;
gcd_loop:
    while (b != 0) {
#pragma HLS LOOP_TRIPCOUNT max=62
        while ((b & 1) == 0) b >>= 1;
        if (a > b) {
            int t = a;
            a = b;
            b = t;
        }
        b -= a;
    }
    return a << shift;
}
