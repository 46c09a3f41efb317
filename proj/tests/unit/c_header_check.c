/* The public header has to compile as C. */
#include <stdio.h>

#include "qop/qop.h"

int main(int argc, char** argv) {
  qop_germ* g = NULL;
  char* out = NULL;
  if (argc < 2 || qop_germ_load_file(argv[1], &g) != QOP_OK) return 1;
  if (qop_series(g, QOP_GEOM, 3, 1, &out) != QOP_OK) return 1;
  puts(out);
  qop_string_free(out);
  qop_germ_free(g);
  return 0;
}
