#include <stdio.h>
#include "casimir.h"

int main(void) {
    CasimirSphereEnergy e;
    if (casimir_sphere_energy(NULL, &e) != CASIMIR_STATUS_OK) {
        fprintf(stderr, "%s\n", casimir_last_error());
        return 1;
    }
    printf("sphere total %.9g\n", e.total);

    CasimirCylinder *c = NULL;
    if (casimir_cylinder_energy(NULL, CASIMIR_ALPHA_VARIANT_QUADRATIC, &c) != CASIMIR_STATUS_OK) {
        fprintf(stderr, "%s\n", casimir_last_error());
        return 1;
    }
    printf("cylinder total %.9g\n", casimir_cylinder_total(c));
    casimir_cylinder_free(c);

    double x;
    CasimirStatus s = casimir_bessel_j_zero(99, 1, CASIMIR_ZERO_KIND_FUNCTION, &x);
    printf("order 99: %s (%s)\n", casimir_status_message(s), casimir_last_error());
    return 0;
}
