int dummy_evalharness;
