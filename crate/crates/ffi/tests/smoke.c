#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "kcore.h"

#define CHECK(cond)                                                    \
  do {                                                                 \
    if (!(cond)) {                                                     \
      const char *msg = kc_last_error_message();                       \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,   \
              msg ? msg : "no message");                               \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  /* K4 on {0,1,2,3} plus the pendant edge {3,4}. */
  const uint32_t lines[] = {0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3, 3, 4};
  KcGraph *graph = NULL;
  CHECK(kc_graph_from_lines(5, lines, 7, false, true, &graph) == KC_STATUS_OK);
  CHECK(kc_graph_vertex_count(graph) == 5);
  CHECK(kc_graph_line_count(graph) == 7);

  KcCores *cores = NULL;
  CHECK(kc_cores_decompose(graph, KC_DEGREE_MODE_IN, &cores) == KC_STATUS_MODE_MISMATCH);
  CHECK(kc_last_error_message() != NULL);
  CHECK(kc_cores_decompose(graph, KC_DEGREE_MODE_UNDIRECTED, &cores) == KC_STATUS_OK);

  size_t values[5];
  CHECK(kc_cores_copy(cores, values, 5) == KC_STATUS_OK);
  const size_t expected[5] = {3, 3, 3, 3, 1};
  CHECK(memcmp(values, expected, sizeof expected) == 0);
  CHECK(kc_cores_max(cores) == 3);

  char *clu = kc_cores_to_clu(cores);
  CHECK(clu != NULL && strcmp(clu, "*Vertices 5\n3\n3\n3\n3\n1\n") == 0);
  kc_string_free(clu);

  kc_cores_free(cores);
  kc_graph_free(graph);

  CHECK(kc_graph_from_pajek("*Vertices 1\n*Edges\n1 2\n", &graph) == KC_STATUS_PARSE_ERROR);
  puts("ok");
  return 0;
}
