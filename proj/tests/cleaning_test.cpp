int dummy_cleaning;
