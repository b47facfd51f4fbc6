/* Exercises the C interface from C. */
#include "trisq/trisq.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                    \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

int main(void) {
  char* s = NULL;
  const char* where = NULL;

  trisq_graph* g = NULL;
  EXPECT(trisq_graph_parse("{\"n\": 4, \"edges\": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}", &g) == TRISQ_OK);
  EXPECT(trisq_graph_order(g) == 4);
  EXPECT(trisq_graph_size(g) == 6);
  EXPECT(trisq_graph_regular_degree(g) == 3);
  EXPECT(trisq_graph_cycle_point(g, &s) == TRISQ_OK);
  EXPECT(strstr(s, "\"c3\": \"4\"") != NULL);
  trisq_string_free(s);
  EXPECT(trisq_graph_moments(g, 4, &s) == TRISQ_OK);
  EXPECT(strstr(s, "\"num\": \"7\"") != NULL);
  trisq_string_free(s);
  trisq_graph_free(g);

  uint32_t path[] = {0, 1, 1, 2};
  EXPECT(trisq_graph_from_edges(3, path, 2, &g) == TRISQ_OK);
  EXPECT(trisq_graph_regular_degree(g) == -1);
  EXPECT(trisq_graph_cycle_point(g, &s) == TRISQ_NOT_REGULAR);
  EXPECT(strlen(trisq_last_error()) > 0);
  trisq_graph_free(g);

  EXPECT(trisq_graph_parse("{\"n\": 2, \"edges\": [[0, 5]]}", &g) == TRISQ_INVALID_ARGUMENT);
  EXPECT(trisq_graph_parse("{", &g) == TRISQ_PARSE_ERROR);
  EXPECT(trisq_graph_load("/nonexistent/graph.json", &g) == TRISQ_IO_ERROR);
  EXPECT(trisq_graph_parse(NULL, &g) == TRISQ_INVALID_ARGUMENT);

  EXPECT(trisq_polygon_json(3, 0, &s) == TRISQ_OK);
  EXPECT(strstr(s, "\"vertex_count\": 4") != NULL);
  trisq_string_free(s);
  EXPECT(trisq_polygon_locate(3, "1/2", "3/4", &where) == TRISQ_OK);
  EXPECT(strcmp(where, "interior") == 0);
  EXPECT(trisq_polygon_locate(3, "x", "0", &where) == TRISQ_PARSE_ERROR);
  EXPECT(trisq_polygon_json(2, 0, &s) == TRISQ_OUT_OF_RANGE);
  EXPECT(trisq_limit_region_classify(64, "1/2", "1/4", &where) == TRISQ_OK);
  EXPECT(strcmp(where, "boundary") == 0);
  EXPECT(trisq_polygon_svg(3, 0, &s) == TRISQ_OK);
  EXPECT(strncmp(s, "<svg", 4) == 0);
  trisq_string_free(s);

  trisq_extreme* e = NULL;
  int passed = 0;
  EXPECT(trisq_extreme_build(4, 2, NULL, 0, 1, &e) == TRISQ_OK);
  EXPECT(trisq_graph_regular_degree(trisq_extreme_graph(e)) == 4);
  EXPECT(trisq_extreme_hypergraph(e) != NULL);
  EXPECT(trisq_extreme_report(e, &passed, &s) == TRISQ_OK);
  EXPECT(passed == 1);
  trisq_string_free(s);
  trisq_extreme_free(e);
  unsigned bad_sizes[] = {1, 1};
  EXPECT(trisq_extreme_build(3, 0, bad_sizes, 2, 1, &e) == TRISQ_INVALID_ARGUMENT);

  trisq_blueprint* bp = NULL;
  EXPECT(trisq_realize(3, "1/2", "3/4", 1, &bp) == TRISQ_OK);
  EXPECT(trisq_blueprint_json(bp, &s) == TRISQ_OK);
  EXPECT(strstr(s, "\"N\": \"120\"") != NULL);
  trisq_string_free(s);
  EXPECT(trisq_blueprint_build(bp, 1000, &g) == TRISQ_OK);
  EXPECT(trisq_graph_order(g) == 120);
  trisq_graph_free(g);
  trisq_blueprint_free(bp);
  EXPECT(trisq_realize(3, "2", "0", 1, &bp) == TRISQ_OUTSIDE_REGION);

  trisq_report* rep = NULL;
  EXPECT(trisq_verify_region(3, 6, 1, 0, 0, &rep) == TRISQ_OK);
  EXPECT(trisq_report_passed(rep) == 1);
  EXPECT(trisq_report_complete(rep) == 1);
  trisq_report_free(rep);

  trisq_batch* batch = NULL;
  EXPECT(trisq_sample_batch(3, 10, 5, 1, 1, &batch) == TRISQ_OK);
  EXPECT(trisq_batch_csv(batch, &s) == TRISQ_OK);
  EXPECT(strncmp(s, "index,d3_num", 12) == 0);
  trisq_string_free(s);
  trisq_batch_free(batch);
  EXPECT(trisq_sample_batch(3, 5, 5, 1, 1, &batch) == TRISQ_INVALID_ARGUMENT);

  EXPECT(strcmp(trisq_status_name(TRISQ_PROPERTY_VIOLATION), "property_violation") == 0);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi ok\n");
  return 0;
}
