// mock: fail_at=compile
#include <hls_stream.h>
int dot_product(const int a[32], const int b[32]) {
    hls::stream<int> acc_stream;  // stream misuse, rejected by the frontend
    int acc = 0;
    for (int i = 0; i < 32; ++i) acc += a[i] * b[i]
    return acc;
}