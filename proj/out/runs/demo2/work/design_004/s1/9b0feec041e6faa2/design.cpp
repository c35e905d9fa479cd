// mock: fail_at=synth
void mat_vec4(const int m[4][4], const int v[4], int out[4]) {
    int* heap = new int[4];  // dynamic allocation, not synthesizable
    for (int r = 0; r < 4; ++r) {
        heap[r] = 0;
        for (int c = 0; c < 4; ++c) heap[r] += m[r][c] * v[c];
        out[r] = heap[r];
    }
    delete[] heap;
}