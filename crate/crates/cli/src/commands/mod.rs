pub mod bend;
pub mod character;
pub mod invariant;
pub mod limitset;
pub mod verify;
