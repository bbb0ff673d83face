use std::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, TensorError>;

/// Errors emitted by tensor construction, graph ops and module forwards.
#[derive(Clone, Debug, PartialEq)]
pub enum TensorError {
    /// Data buffer length does not match the product of the shape.
    DataLength { expected: usize, got: usize },
    /// Two operands disagree on one dimension; `dim` names it (n/c/h/w).
    ShapeMismatch {
        op: &'static str,
        dim: &'static str,
        left: usize,
        right: usize,
    },
    /// Convolution (or pooling) arithmetic produced an empty output.
    ZeroSizeOutput {
        op: &'static str,
        out_h: isize,
        out_w: isize,
    },
    /// Channel count is not divisible as required (groups, splits).
    NotDivisible {
        op: &'static str,
        value: usize,
        by: usize,
    },
    /// An operation was handed a value from another graph or a reset graph.
    DetachedValue,
    /// backward() was already run on this graph.
    GraphConsumed,
    /// backward() needs a 1x1x1x1 scalar loss.
    NonScalarLoss { shape: [usize; 4] },
    /// Batch norm in training mode needs at least two samples per channel.
    DegenerateBatch { per_channel: usize },
    /// A map that must be strictly binary contained another value.
    NonBinaryMask { value: f64 },
    /// Input spatial size does not satisfy a precondition.
    BadSpatialSize { op: &'static str, h: usize, w: usize, need: &'static str },
    /// Serialized tensor blob is malformed.
    BadTensorBlob { detail: String },
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::DataLength { expected, got } => {
                write!(f, "data length {got} does not match shape volume {expected}")
            }
            TensorError::ShapeMismatch { op, dim, left, right } => {
                write!(f, "{op}: dimension `{dim}` mismatch ({left} vs {right})")
            }
            TensorError::ZeroSizeOutput { op, out_h, out_w } => {
                write!(f, "{op}: output would be empty ({out_h}x{out_w})")
            }
            TensorError::NotDivisible { op, value, by } => {
                write!(f, "{op}: {value} is not divisible by {by}")
            }
            TensorError::DetachedValue => {
                write!(f, "value does not belong to this graph (detached or reset)")
            }
            TensorError::GraphConsumed => {
                write!(f, "graph already consumed by backward(); reset it first")
            }
            TensorError::NonScalarLoss { shape } => {
                write!(
                    f,
                    "backward needs a 1x1x1x1 loss, got {}x{}x{}x{}",
                    shape[0], shape[1], shape[2], shape[3]
                )
            }
            TensorError::DegenerateBatch { per_channel } => {
                write!(f, "batch norm in training mode needs n*h*w >= 2 per channel, got {per_channel}")
            }
            TensorError::NonBinaryMask { value } => {
                write!(f, "mask must be strictly binary, found {value}")
            }
            TensorError::BadSpatialSize { op, h, w, need } => {
                write!(f, "{op}: spatial size {h}x{w} invalid, need {need}")
            }
            TensorError::BadTensorBlob { detail } => write!(f, "bad tensor blob: {detail}"),
        }
    }
}

impl std::error::Error for TensorError {}
