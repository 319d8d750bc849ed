int dummy_transforms;
