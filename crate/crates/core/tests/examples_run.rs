//! Every example runs to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;

        #[test]
        fn $name() {
            $name::run().expect("example runs");
        }
    };
}

example!(field_arithmetic, "../examples/field_arithmetic.rs");
example!(conjugacy_classes, "../examples/conjugacy_classes.rs");
example!(character_tables, "../examples/character_tables.rs");
example!(jacquet_langlands, "../examples/jacquet_langlands.rs");
example!(tame_types, "../examples/tame_types.rs");
example!(serre_weights, "../examples/serre_weights.rs");
example!(oracles, "../examples/oracles.rs");
