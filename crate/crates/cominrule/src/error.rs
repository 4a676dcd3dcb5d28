use thiserror::Error;

/// Errors produced by construction, parsing and computation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system {0}_{1}; supported: A_n (n>=1), B_n (n>=3, B_2 is aliased to C_2), C_n (n>=2), D_n (n>=4, D_3 is aliased to A_3), E6, E7")]
    UnsupportedRootSystem(char, usize),

    #[error("malformed space spec `{0}`; expected Gr:k,n | QB:n | LG:n | QD:n | OG:n | E6 | E7 | Pmin:n | OGmin:n")]
    MalformedSpaceSpec(String),

    #[error("unsupported space `{spec}`: {reason}")]
    UnsupportedSpace { spec: String, reason: String },

    #[error("no planar grid embedding found for `{0}`")]
    EmbeddingNotFound(String),

    #[error("column {column} of tuple {tuple} is not realizable as an order ideal of {space}")]
    BadTupleColumn {
        tuple: String,
        column: usize,
        space: String,
    },

    #[error("cannot parse `{0}` as a shape tuple")]
    BadTupleSyntax(String),

    #[error("bitmask {0:#x} is not a shape of this space")]
    NotAShape(u32),

    #[error("skew pair is not nested: inner {inner:#x} is not contained in outer {outer:#x}")]
    NotNested { inner: u32, outer: u32 },

    #[error("element is not Grassmannian at the parabolic node: descent at simple root {0}")]
    NotGrassmannian(usize),

    #[error("the shape/Weyl correspondence is not defined for space `{0}`")]
    NoWeylCorrespondence(String),

    #[error("set is not an inversion set of any Weyl group element")]
    NotInversionSet,

    #[error("box {0} is not an inner corner of the tableau")]
    NotInnerCorner(usize),

    #[error("box {0} is not an outer corner of the tableau")]
    NotOuterCorner(usize),

    #[error("tableau shapes do not match: expected inner shape {expected:#x}, got {got:#x}")]
    ShapeMismatch { expected: u32, got: u32 },

    #[error("labels do not form a standard tableau: {0}")]
    NotStandard(String),

    #[error("structural zero: {0}")]
    StructuralZero(String),

    #[error("space has {shapes} shapes, above the table bound {bound}")]
    TableTooLarge { shapes: usize, bound: usize },

    #[error("64-bit integer overflow in coefficient arithmetic")]
    Overflow,

    #[error("unknown suite `{0}`; suites: confluence, infusion, axioms, duality, chevalley, associativity, recursion, oracle, isomorphism")]
    UnknownSuite(String),

    #[error("construction invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
