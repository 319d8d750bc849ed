int dummy_agreement;
