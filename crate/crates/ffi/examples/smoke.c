#include <stdio.h>
#include <string.h>

#include "dnacodes.h"

#define CHECK(call)                                                        \
    do {                                                                   \
        DnaStatus s_ = (call);                                             \
        if (s_ != DNA_STATUS_OK) {                                         \
            fprintf(stderr, "%s -> %d: %s\n", #call, (int)s_,               \
                    dna_last_error_message());                             \
            return 1;                                                      \
        }                                                                  \
    } while (0)

int main(void) {
    const char *spec =
        "{\"n\":8,\"generators\":[{\"f2\":\"x^6+x^4+x^2+1\",\"u\":\"x^5+x\",\"u2\":\"x^4+x^2\"}]}";
    DnaCode *code = NULL;
    CHECK(dna_code_from_json(spec, &code));

    size_t dim = 0;
    int32_t dist = 0;
    bool rev = false, rc = false;
    CHECK(dna_code_dim(code, &dim));
    CHECK(dna_code_min_distance(code, 24, &dist));
    CHECK(dna_code_is_reversible(code, &rev));
    CHECK(dna_code_is_rc_closed(code, &rc));

    DnaCode *dual = NULL;
    size_t ddim = 0;
    CHECK(dna_code_dual(code, DNA_FLAVOR_EUCLIDEAN, &dual));
    CHECK(dna_code_dim(dual, &ddim));

    char *table = NULL;
    CHECK(dna_table2_json(&table));
    int has_u2 = strstr(table, "CGCGCGCGCGCGCGCG") != NULL;

    DnaStatus bad = dna_code_from_json("{", &code);

    printf("dim=%zu dist=%d rev=%d rc=%d dual_dim=%zu table_has_u2=%d bad=%d\n",
           dim, dist, rev, rc, ddim, has_u2, (int)bad);

    dna_string_free(table);
    dna_code_free(dual);
    dna_code_free(code);
    return !(dim == 6 && dist == 4 && rev && rc && ddim == 18 && has_u2 &&
             bad == DNA_STATUS_PARSE);
}
