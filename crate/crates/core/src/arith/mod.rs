pub mod algnum;
pub mod poly;
pub mod rat;
pub mod ring;
pub mod roots;
pub mod theta;
pub mod tower;

pub use algnum::{AlgError, AlgNum, Split, TowerCtx};
pub use rat::Rat;
pub use ring::{Field, Ring};
pub use theta::ThetaPoly;
pub use tower::{Tower, Val};
