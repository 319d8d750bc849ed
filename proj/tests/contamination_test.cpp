int dummy_contamination;
