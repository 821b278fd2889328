#!/usr/bin/env python3
"""
Setup script: writes a starter run configuration for the two-level atom toolkit
"""

import json
import sys
from pathlib import Path

STARTERS = {
    "sweep": {
        "command": "sweep",
        "model": "driven",
        "params": {"mu": 1.0, "I0": 1.0, "beta_pop": 1.0, "gamma1": 1.0, "gamma2": 1.0,
                   "delta1": 0.0, "delta2": 0.0, "direction": [0.0, 0.0, 1.0], "kvec": [0.0, 0.0, 1.0]},
        "grid": {"r_min": 0.1, "r_max": 10.0, "n_points": 100, "spacing": "linear"},
    },
    "dynamics": {
        "command": "dynamics",
        "model": "bloch2",
        "params": {"mu": 1.0, "E0": 1.0, "gamma": 2.0, "omega_a": 0.0, "omega0": 0.0,
                   "hbar": 1.0, "initial": [1.0, 0.0]},
        "time": {"duration": 10.0, "dt": 0.01},
    },
    "audit": {
        "command": "audit",
        "params": {"dmag": 1.0, "r": 1.0, "k": 1.0},
        "mc": {"n_samples": 200000, "seed": 12345},
    },
    "regime": {
        "command": "regime",
        "params": {"mu": 1.0, "E0": 0.5, "gamma": 1.0, "k_medium": 1.0, "wavelength": 1.0, "r": 1.0},
    },
}


def get_user_input(prompt, default=""):
    """Get user input with optional default value"""
    if default:
        user_input = input(f"{prompt} [{default}]: ").strip()
        return user_input if user_input else default
    else:
        return input(f"{prompt}: ").strip()


def create_config_file():
    """Create a JSON run configuration from a starter template"""
    print("Setting up a two-level atom toolkit run")
    print("=" * 50)

    command = get_user_input(f"Command ({', '.join(STARTERS)})", "sweep")
    if command not in STARTERS:
        raise ValueError(f"Unknown command {command!r}")
    config = json.loads(json.dumps(STARTERS[command]))

    if command == "sweep":
        config["model"] = get_user_input("Model (pair_raw, pair_averaged, driven)", "driven")
        if config["model"] == "pair_averaged":
            config["params"] = {"dmag": 1.0, "direction": [0.0, 0.0, 1.0], "kvec": [0.0, 0.0, 1.0]}
        elif config["model"] == "pair_raw":
            config["params"] = {"d1": [0.0, 0.0, 1.0], "d2": [0.0, 0.0, 1.0],
                                "direction": [1.0, 0.0, 0.0], "kvec": [1.0, 0.0, 0.0]}
        config["grid"]["r_min"] = float(get_user_input("Smallest separation r_min", "0.1"))
        config["grid"]["r_max"] = float(get_user_input("Largest separation r_max", "10.0"))
        config["grid"]["n_points"] = int(get_user_input("Grid points", "100"))
    elif command == "dynamics":
        config["time"]["duration"] = float(get_user_input("Duration", "10.0"))
        config["time"]["dt"] = float(get_user_input("Time step dt", "0.01"))
    elif command == "audit":
        config["mc"]["seed"] = int(get_user_input("Monte-Carlo seed", "12345"))

    output = get_user_input("Output file (empty for stdout)", f"out/{command}.csv" if command in ("sweep", "dynamics") else "")
    if output:
        config["output"] = output

    config_path = Path(get_user_input("Write config to", f"config/my_{command}.json"))
    config_path.parent.mkdir(parents=True, exist_ok=True)
    with open(config_path, "w") as f:
        json.dump(config, f, indent=2)
        f.write("\n")

    print(f"\nCreated {config_path}")
    print("\nNext steps:")
    print("1. Install dependencies: pip install -r requirements.txt")
    print(f"2. Run: python cli/app.py {command} --config {config_path}")
    return True


def main():
    """Main setup function"""
    try:
        create_config_file()
    except KeyboardInterrupt:
        print("\n\nSetup cancelled by user")
        sys.exit(1)
    except Exception as e:
        print(f"\nError during setup: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
