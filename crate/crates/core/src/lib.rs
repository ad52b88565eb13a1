pub mod bialgebra;
pub mod cohomology;
pub mod error;
pub mod exteralg;
pub mod flatliealg;
pub mod sample;
pub mod scalar;
pub mod verify;
pub mod zoo;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;

pub type Algebra = flatliealg::FlatLieAlgebra<Rational>;
pub type LambdaQ = flatliealg::CharacteristicMatrix<Rational>;
pub type MultivectorQ = exteralg::Multivector<Rational>;
pub type CochainQ = cohomology::Cochain<Rational>;
pub type MatrixQ = exteralg::Matrix<Rational>;
pub type SubspaceQ = exteralg::SubspaceBasis<Rational>;
