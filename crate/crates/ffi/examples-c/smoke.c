#include <stdio.h>
#include "tracenorm.h"

int main(void) {
    TnDigraph *d = NULL;
    if (tn_digraph_parse("4 4\n0 1\n1 2\n2 3\n3 0\n", &d) != TN_STATUS_OK) {
        fprintf(stderr, "%s\n", tn_last_error_message());
        return 1;
    }
    double norm = 0.0;
    if (tn_trace_norm(d, 0.0, &norm) != TN_STATUS_OK) {
        return 1;
    }
    TnDeletionReport r;
    if (tn_arc_deletion_report(d, 0, 1, 0.0, 1e-9, &r) != TN_STATUS_OK) {
        return 1;
    }
    printf("%.12g %d\n", norm, r.equality_observed);
    tn_digraph_free(d);
    return 0;
}
