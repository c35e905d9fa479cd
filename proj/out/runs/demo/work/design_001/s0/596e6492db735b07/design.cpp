// mock: base_lut=520 base_cycles=176
void vec_add(const int a[16], const int b[16], int out[16]) {
#pragma HLS ARRAY_PARTITION variable=a cyclic factor=4
#pragma HLS ARRAY_PARTITION variable=b cyclic factor=4
    for (int i = 0; i < 16; ++i) {
#pragma HLS PIPELINE II=1
        out[i] = a[i] + b[i];
    }
}