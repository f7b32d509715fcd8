#include <stdio.h>
#include <string.h>

#include "latscarf.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, \
              #cond);                                            \
      return 1;                                                  \
    }                                                            \
  } while (0)

static const char *EX63 =
    "{\"name\": \"ex63\", \"semigroup\": [[6,4,2,0,5],[0,2,4,6,4]],"
    " \"variables\": [\"a\",\"b\",\"c\",\"d\",\"e\"]}";

int main(void) {
  LsProblem *p = NULL;
  CHECK(ls_problem_from_json(EX63, &p) == LS_STATUS_OK);
  CHECK(ls_problem_num_vars(p) == 5);
  CHECK(ls_problem_rank(p) == 3);

  int64_t degree[2] = {10, 8};
  LsFiber *f = NULL;
  CHECK(ls_fiber_new(p, degree, 2, &f) == LS_STATUS_OK);
  CHECK(ls_fiber_len(f) == 4);
  int64_t m[5];
  CHECK(ls_fiber_monomial(f, 3, m, 5) == LS_STATUS_OK);
  CHECK(m[4] == 2);
  CHECK(ls_fiber_monomial(f, 4, m, 5) == LS_STATUS_OUT_OF_RANGE);
  ls_fiber_free(f);

  LsBettiTable *t = NULL;
  CHECK(ls_betti_new(p, 40, 0, &t) == LS_STATUS_OK);
  CHECK(ls_betti_total(t, 1) == 4);
  CHECK(ls_betti_total(t, 2) == 5);
  CHECK(ls_betti_total(t, 3) == 2);
  size_t beta = 0;
  CHECK(ls_betti_value(p, t, 2, degree, 2, &beta) == LS_STATUS_OK);
  CHECK(beta == 1);
  ls_betti_free(t);

  LsComplex *x = NULL;
  CHECK(ls_complex_new(p, LS_COMPLEX_KIND_GENERALIZED, LS_STRONG_MODE_STRICT,
                       40, &x) == LS_STATUS_OK);
  CHECK(ls_complex_rank(x, 1) == 3);
  CHECK(ls_complex_rank(x, 2) == 2);
  CHECK(ls_complex_squares_to_zero(x));
  char *json = ls_complex_to_json(p, x);
  CHECK(json != NULL && strstr(json, "\"ranks\"") != NULL);
  ls_string_free(json);
  ls_complex_free(x);

  CHECK(ls_betti_new(p, 0, 0, &t) == LS_STATUS_INVALID_INPUT);
  CHECK(strstr(ls_last_error_message(), "bound") != NULL);
  ls_problem_free(p);

  CHECK(ls_problem_from_json("{", &p) == LS_STATUS_PARSE);
  puts("ok");
  return 0;
}
