int dummy_text;
