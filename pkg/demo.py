"""
Demo script for the quaternary Hermitian LCD code toolkit
Shows the basic functionality end to end
"""

from pathlib import Path


def demo_field_arithmetic():
    """Demo GF(4) arithmetic"""
    print("🚀 Demo: GF(4) Arithmetic")
    print("=" * 50)

    try:
        from src.gf4 import ONE, OMEGA, GF4Scalar, GF4Vector, hermitian_inner_product

        print("Multiplication table (0 1 w W):")
        for a in GF4Scalar.elements():
            print("   " + " ".join(str(a * b) for b in GF4Scalar.elements()))

        print(f"\nw^2 = w + 1: {OMEGA * OMEGA == OMEGA + ONE}")
        x, y = GF4Vector("1 w W 0"), GF4Vector("w w 1 1")
        print(f"<{x}, {y}>_H = {hermitian_inner_product(x, y)}")

        return True

    except Exception as e:
        print(f"❌ Demo failed: {e}")
        return False


def demo_certified_code():
    """Demo verification of a certified code"""
    print("\n🚀 Demo: Certified Code C15")
    print("=" * 50)

    try:
        from src.certified_codes import build, verify
        from src.codes import eaqecc_params, hermitian_gram, weight_enumerator

        code = build("C15")
        print(f"✅ Built {code!r}")
        print(f"Gram matrix G conj(G)^T has rank {hermitian_gram(code).rank()} of {code.k}")
        print(f"Weight enumerator: {weight_enumerator(code)}")

        report = verify("C15")
        print(f"\n📋 {report.summary()}")
        print(f"🔬 Entanglement-assisted code: {eaqecc_params(code)}")

        return report.passed

    except Exception as e:
        print(f"❌ Demo failed: {e}")
        return False


def demo_search():
    """Demo a small exhaustive search"""
    print("\n🚀 Demo: Generator Matrix Search")
    print("=" * 50)

    try:
        from src.code_io import format_code
        from src.search import SearchConfig, run_search

        for n, k, d in [(7, 3, 3), (7, 4, 4)]:
            outcome = run_search(SearchConfig(n=n, k=k, d=d))
            print(f"\n🔍 [{n},{k},{d}]_4: {len(outcome.found)} codes, "
                  f"{outcome.nodes_visited} nodes, complete={outcome.complete}")
            if outcome.nonexistence:
                print("✨ No Hermitian LCD code with these parameters exists")
            else:
                print("First code found:")
                print(format_code(outcome.found[0]), end="")

        return True

    except Exception as e:
        print(f"❌ Demo failed: {e}")
        return False


def demo_bounds():
    """Demo the bounds on d4(n,k)"""
    print("\n🚀 Demo: Bounds on d4(n,k)")
    print("=" * 50)

    try:
        from src.bounds import bound_record
        from src.certified_codes import witness_table

        witnesses = witness_table()
        for n, k in [(12, 6), (15, 7), (20, 8), (19, 16), (30, 27)]:
            print(f"📐 {bound_record(n, k, witnesses).describe()}")

        return True

    except Exception as e:
        print(f"❌ Demo failed: {e}")
        return False


def demo_project_structure():
    """Demo project structure and files"""
    print("\n🚀 Demo: Project Structure")
    print("=" * 50)

    try:
        project_root = Path(__file__).parent

        print("📁 Project Structure:")

        # Show main files
        main_files = [
            "cli.py",
            "config.py",
            "requirements.txt",
            "README.md",
            ".env.example"
        ]

        for file in main_files:
            filepath = project_root / file
            if filepath.exists():
                size = filepath.stat().st_size
                print(f"├── {file} ({size:,} bytes)")
            else:
                print(f"├── {file} (missing)")

        # Show src directory
        src_dir = project_root / "src"
        if src_dir.exists():
            print("├── src/")
            for file in sorted(src_dir.glob("*.py")):
                size = file.stat().st_size
                print(f"│   ├── {file.name} ({size:,} bytes)")

        # Show data directory
        print("└── data/")
        for file in sorted((project_root / "data" / "codes").glob("*.txt")):
            print(f"    ├── codes/{file.name}")

        return True

    except Exception as e:
        print(f"❌ Demo failed: {e}")
        return False


def main():
    """Run all demos"""
    print("🎉 Quaternary Hermitian LCD Code Toolkit - Demo")
    print("=" * 60)
    print()

    demos = [
        demo_field_arithmetic,
        demo_certified_code,
        demo_search,
        demo_bounds,
        demo_project_structure
    ]

    success_count = 0

    for demo in demos:
        if demo():
            success_count += 1
        print()

    print("=" * 60)
    print(f"✅ Demo completed: {success_count}/{len(demos)} sections successful")

    if success_count == len(demos):
        print("🎉 All demos completed successfully!")
        print("\nNext steps:")
        print("1. Install dependencies: pip install -r requirements.txt")
        print("2. Verify every certified code: python cli.py verify --all")
        print("3. Run a search: python cli.py search --n 12 --k 6 --d 6 --jobs 0 --checkpoint data/checkpoints/12_6_6.ckpt")
    else:
        print("⚠️ Some demos failed. Please check the error messages above.")


if __name__ == "__main__":
    main()
