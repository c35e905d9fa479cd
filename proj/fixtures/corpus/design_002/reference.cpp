int dot_product(const int a[32], const int b[32]) {
    int acc = 0;
mac_loop:
    for (int i = 0; i < 32; ++i) {
#pragma HLS PIPELINE II=1
#pragma HLS UNROLL factor=2
        acc += a[i] * b[i];
    }
    return acc;
}
