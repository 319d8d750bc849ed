int dummy_judge;
