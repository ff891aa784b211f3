//! Compiles and runs the code listings of the guide in `book/src` as
//! doc-tests, so the guide cannot drift from the library.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub mod $name {}
    };
}

chapter!(introduction, "introduction.md");
chapter!(standard_subspaces, "standard-subspaces.md");
chapter!(lorentz, "lorentz.md");
chapter!(orbit_models, "orbit-models.md");
chapter!(spin, "spin.md");
chapter!(nets, "nets.md");
chapter!(split, "split.md");
chapter!(command_line, "command-line.md");
