#include <stdio.h>
#include <string.h>

#include "hopfcyc.h"

int main(void) {
    HopfcycInstance *z3 = NULL;
    if (hopfcyc_instance_new("group:Z3", "Q", &z3) != HOPFCYC_STATUS_OK) {
        return 10;
    }
    size_t dims[5];
    if (hopfcyc_cyclic_dims(z3, NULL, 4, 0, dims, 5) != HOPFCYC_STATUS_OK) {
        return 11;
    }
    printf("%zu %zu %zu %zu %zu\n", dims[0], dims[1], dims[2], dims[3], dims[4]);
    hopfcyc_instance_free(z3);

    HopfcycInstance *bad = NULL;
    if (hopfcyc_instance_new("nope", NULL, &bad) != HOPFCYC_STATUS_CONFIG_ERROR || bad != NULL) {
        return 12;
    }
    char msg[256];
    hopfcyc_last_error(msg, sizeof msg);
    printf("%s\n", msg);

    const char *argv[] = {"verify-axioms", "--instance", "aslq2", "--pair", "epsilon,1", "--unchecked", "--n-max", "1"};
    HopfcycReport *r = NULL;
    HopfcycStatus s = hopfcyc_run(argv, 8, &r);
    int ok = s == HOPFCYC_STATUS_CHECK_FAILED && hopfcyc_report_exit_code(r) == 1 &&
             strstr(hopfcyc_report_json(r), "\"witness\": \"u\"") != NULL;
    hopfcyc_report_free(r);
    return ok ? 0 : 13;
}
