pub mod algebra;
pub mod structmat;
pub mod seqcomb;
pub mod completion;
pub mod oracle;
pub mod io;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/eigenstructure.md")]
    struct Eigenstructure;
    #[doc = include_str!("../../../book/src/majorization.md")]
    struct Majorization;
    #[doc = include_str!("../../../book/src/prescriptions.md")]
    struct Prescriptions;
    #[doc = include_str!("../../../book/src/chains.md")]
    struct Chains;
    #[doc = include_str!("../../../book/src/oracle.md")]
    struct Oracle;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
