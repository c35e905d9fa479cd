// mock: base_lut=700 base_cycles=352 base_power_mw=131
int dot_product(const int a[32], const int b[32]) {
    int acc0 = 0, acc1 = 0;
    for (int i = 0; i < 32; i += 2) {
#pragma HLS PIPELINE II=1
        acc0 += a[i] * b[i];
        acc1 += a[i + 1] * b[i + 1];
    }
    return acc0 + acc1;
}