//! Enumeration oracles: partitions and their relatives, with every statistic
//! computed directly from its combinatorial definition.

mod oracles;
mod partition;
mod tcore;

pub use oracles::{
    oracle_crank, oracle_orank, oracle_parts_count, oracle_rank, oracle_spt_crank,
    oracle_spt_crank_naive, oracle_tcore_count, oracle_thook, oracle_unimodal,
};
pub use partition::{
    crank_of, enum_partitions, for_each_bounded, for_each_distinct, hook_lengths, is_t_core,
    overpartition_counts, p_of, partition_numbers, pp_of, rank_of, spt_of, Partition, Partitions,
};
pub use tcore::{
    core_size, enum_t_cores, oracle_tcore_crank, phi2, phi2_inverse, tcore_crank_of_vector,
    tcore_crank_weights,
};
