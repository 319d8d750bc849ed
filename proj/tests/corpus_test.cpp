int dummy_corpus;
