int dummy_metrics;
