int dummy_cli;
