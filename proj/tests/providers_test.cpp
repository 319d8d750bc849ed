int dummy_providers;
