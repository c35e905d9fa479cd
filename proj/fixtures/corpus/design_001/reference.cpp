void vec_add(const int a[16], const int b[16], int out[16]) {
#pragma HLS ARRAY_PARTITION variable=a cyclic factor=2
#pragma HLS ARRAY_PARTITION variable=b cyclic factor=2
add_loop:
    for (int i = 0; i < 16; ++i) {
#pragma HLS PIPELINE II=1
        out[i] = a[i] + b[i];
    }
}
