#include <stdio.h>
#include <string.h>
#include "wha.h"

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,           \
              wha_last_error());                                       \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  WhaAlgebra *a = NULL, *d = NULL, *bad = NULL;
  char *json = NULL;

  EXPECT(wha_algebra_build("grp(S3)", &a) == WHA_STATUS_OK);
  EXPECT(wha_algebra_dim(a) == 6);
  EXPECT(wha_algebra_dual(a, &d) == WHA_STATUS_OK);
  EXPECT(wha_algebra_dim(d) == 6);

  EXPECT(wha_check_all(a, 1, &json) == WHA_STATUS_OK);
  EXPECT(strstr(json, "\"class_equation\"") != NULL);
  wha_string_free(json);

  EXPECT(wha_report_dims(a, 1, &json) == WHA_STATUS_OK);
  EXPECT(strstr(json, "\"FPdimA\": 6.0") != NULL);
  wha_string_free(json);

  EXPECT(wha_algebra_build("grp(Q8)", &bad) == WHA_STATUS_INPUT_ERROR);
  EXPECT(bad == NULL);
  EXPECT(strlen(wha_last_error()) > 0);
  EXPECT(wha_algebra_from_json(NULL, &bad) == WHA_STATUS_NULL_POINTER);

  wha_algebra_free(d);
  wha_algebra_free(a);
  printf("ok %s\n", wha_version());
  return 0;
}
