"""handlang: a hand-gesture sentence interpreter with deictic targeting,
behavior-tree execution and a simulated tabletop world."""

__version__ = "0.1.0"

from .handstream import (FeatureVector, HandFrame, Trajectory, parse_frame,
                         resample, static_features, trajectory_window)
from .classify import (DynamicTemplates, GestureProbabilities, GestureSet, StaticModel,
                       balanced_accuracy, classify_dynamic, classify_static,
                       classify_static_deterministic, dtw_distance, euclidean_baseline,
                       train_static)
from .deictic import Ray, TargetDistances, object_distances, ray_from_hand, table_point, target_object
from .episode import Episode, EpisodeSummary, GestureEvent, activations, episode_summary, segment
from .sentence import (GestureSentence, Intent, assemble, complexity, estimate_intent,
                       metric_value, required_slots)
from .simworld import (Perturbation, Primitive, TeleopController, TeleopMap, WorldState,
                       apply, feasible, load_scene, perturb)
from .behavior import (ActionTrace, BehaviorTree, Task, build_tree, execute,
                       resolve_preconditions, tick)
from .config import PipelineConfig, load_config
