macro_rules! examples {
    ($($name:ident => $path:literal),* $(,)?) => {
        $(
            #[allow(dead_code)]
            #[path = $path]
            mod $name;

            #[test]
            fn $name() {
                $name::run_example().unwrap();
            }
        )*
    };
}

examples!(
    constraint_families => "../examples/constraint_families.rs",
    nondeterministic_step => "../examples/nondeterministic_step.rs",
    supported_models => "../examples/supported_models.rs",
    horn_computations => "../examples/horn_computations.rs",
    stable_models => "../examples/stable_models.rs",
    normal_embedding => "../examples/normal_embedding.rs",
    lparse_programs => "../examples/lparse_programs.rs",
    possible_models => "../examples/possible_models.rs",
);
