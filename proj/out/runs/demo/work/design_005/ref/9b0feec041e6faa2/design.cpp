static int clamp_to(int v, int lo, int hi) {
    if (v < lo) return lo;
    if (v > hi) return hi;
    return v;
}

int sat_acc(const int xs[64], int lo, int hi) {
    int acc = 0;
acc_loop:
    for (int i = 0; i < 64; ++i) {
#pragma HLS PIPELINE II=2
        acc = clamp_to(acc + xs[i], lo, hi);
    }
    return acc;
}
