# File-backed loaders and writers for run configs and output tables
