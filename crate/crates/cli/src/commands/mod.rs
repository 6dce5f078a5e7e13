pub mod collide;
pub mod oeis;
pub mod poly;
pub mod spectrum;
pub mod verify;
