use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("vector is not in the positive cone Q+")]
    NotInPositiveCone,
    #[error("word not reduced")]
    NotReduced,
    #[error("letter {0} is not a simple root index")]
    BadLetter(usize),
    #[error("invalid reflection chain: {0}")]
    InvalidChain(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("all reflections in the sequence are pairwise orthogonal")]
    NoNonorthogonalPair,
    #[error("roots are not pairwise orthogonal")]
    NotOrthogonal,
    #[error("element is not in W^w")]
    NotInWw,
    #[error("vector is not a positive root")]
    NotAPositiveRoot,
    #[error("Serre relation needs distinct indices, got ({0}, {0})")]
    InvalidPair(usize),
    #[error("weight of height {height} exceeds the height bound {bound}")]
    HeightOverflow { height: u32, bound: u32 },
    #[error("element does not lie in U+[w]")]
    NotInSubalgebra,
    #[error("bad index pair ({i}, {j}) for a word of length {len}")]
    BadIndex { i: usize, j: usize, len: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("invalid coideal triple: {0}")]
    InvalidTriple(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
