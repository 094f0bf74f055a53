########################################################
# ------------- synthlib.model: 0.1.0 ----------------

# Feed-forward encoder and attribute decoder written with numpy:
# featurization, forward and backward passes, Adam training,
# weights files and inspection tools
# Library version: 0.1.0
#########################################################

from .featurizer import EncodingRangeError, ExampleFeaturizer, FeaturizedBatch, input_width  # noqa
from .params import ModelParams  # noqa
from .network import (  # noqa
    Prediction,
    batch_loss_and_gradient,
    encode_example,
    encode_set,
    forward,
    grad,
    loss,
    loss_from_logits,
    predict,
    predict_batch,
    sigmoid,
)
from .training import Adam, TrainConfig, TrainingDivergedError, TrainingLog, split_validation, train  # noqa
from .persistence import CorruptWeightsError, DimensionMismatchError, WeightsFileError, load_params, save_params  # noqa
from .analysis import confusion_from_predictions, confusion_matrix, dump_embeddings  # noqa
