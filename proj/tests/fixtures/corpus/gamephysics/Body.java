package gamephysics;

public final class RigidBody {
    private double positionX;
    private double positionY;
    private double velocityX;
    private double velocityY;
    private final double mass;

    public RigidBody(double mass, double startX, double startY) {
        this.mass = mass;
        this.positionX = startX;
        this.positionY = startY;
    }

    public void applyImpulse(double impulseX, double impulseY) {
        velocityX += impulseX / mass;
        velocityY += impulseY / mass;
    }

    public void integrate(double deltaSeconds, double gravity) {
        velocityY += gravity * deltaSeconds;
        positionX += velocityX * deltaSeconds;
        positionY += velocityY * deltaSeconds;
    }

    public double kineticEnergy() {
        double speedSquared = velocityX * velocityX + velocityY * velocityY;
        return 0.5 * mass * speedSquared;
    }

    public double getPositionX() {
        return positionX;
    }

    public double getPositionY() {
        return positionY;
    }
}
