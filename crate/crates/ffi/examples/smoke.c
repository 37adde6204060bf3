/* cc -Icrates/ffi/include crates/ffi/examples/smoke.c target/debug/libqforms_ffi.a -lpthread -ldl -lm */
#include <stdio.h>
#include "qforms.h"

int main(void) {
    QfClassification *report = NULL;
    uint64_t len = 0, a, b, c;
    if (qf_classify(2, 10, 6, 2000, &report) != QF_STATUS_OK) {
        fprintf(stderr, "classify failed: %s\n", qf_last_error_message());
        return 1;
    }
    qf_classification_len(report, &len);
    printf("%llu universal triples\n", (unsigned long long)len);
    for (uint64_t i = 0; i < len; i++) {
        qf_classification_get(report, i, &a, &b, &c);
        printf("(%llu,%llu,%llu)\n", (unsigned long long)a, (unsigned long long)b, (unsigned long long)c);
    }
    qf_classification_free(report);
    return len == 22 ? 0 : 1;
}
